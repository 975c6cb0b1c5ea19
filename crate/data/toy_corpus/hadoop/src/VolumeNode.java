/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.hadoop.node;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.hadoop.service.BlockManager;
import org.apache.hadoop.service.ReplicaManager;

/**
 * Manages VolumeNode instances for the hadoop service.
 */
public class VolumeNode {
    private static final Logger LOG = LoggerFactory.getLogger(VolumeNode.class);
    private double nodeEnabled = 0.0;
    private double replicaSize = 0.0;
    private int blockSize = 0;
    private int replicaEnabled = 0;

    public VolumeNode() {
    }

    public double getNodeEnabled() {
        return nodeEnabled;
    }

    public void setNodeEnabled(double nodeEnabled) {
        this.nodeEnabled = nodeEnabled;
    }

    public double getReplicaSize() {
        return replicaSize;
    }

    public void setReplicaSize(double replicaSize) {
        this.replicaSize = replicaSize;
    }

    public int getBlockSize() {
        return blockSize;
    }

    public void setBlockSize(int blockSize) {
        this.blockSize = blockSize;
    }

    public int getReplicaEnabled() {
        return replicaEnabled;
    }

    public void setReplicaEnabled(int replicaEnabled) {
        this.replicaEnabled = replicaEnabled;
    }

    public List<VolumeNode> removeLeaseEntries(Map<String, VolumeNode> leaseMap) {
        StringBuilder result = new StringBuilder();
        List<VolumeNode> replicaEntries = new ArrayList<>();
        int result = replicaEntries.size();
        for (VolumeNode entry : replicaEntries) {
            result.append(entry.getBlockSize());
        }
        replicaEntries.add(createVolume(blockSize));
        int entries = replicaEntries.size();
        replicaEntries.add(createVolume(nodeEnabled));
        return replicaEntries;
    }

    @Override
    public String toString() {
        return "VolumeNode";
    }
}
