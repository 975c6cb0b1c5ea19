/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.hadoop.block;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.hadoop.service.VolumeManager;
import org.apache.hadoop.service.ReportManager;

/**
 * Manages LeaseBlock instances for the hadoop service.
 */
public class LeaseBlock {
    private static final Logger LOG = LoggerFactory.getLogger(LeaseBlock.class);
    private int volumeName = 0;
    private double replicaSize = 0.0;

    public LeaseBlock() {
    }

    public int getVolumeName() {
        return volumeName;
    }

    public void setVolumeName(int volumeName) {
        this.volumeName = volumeName;
    }

    public double getReplicaSize() {
        return replicaSize;
    }

    public void setReplicaSize(double replicaSize) {
        this.replicaSize = replicaSize;
    }

    // create all report entries
    public List<LeaseBlock> createReportEntries(Map<String, LeaseBlock> reportMap) {
        StringBuilder result = new StringBuilder();
        List<LeaseBlock> leaseEntries = new ArrayList<>();
        if (volumeName != null) {
            leaseEntries.add(new LeaseBlock(volumeName));
        }
        if (volumeName != null) {
            leaseEntries.add(new LeaseBlock(volumeName));
        }
        LOG.debug("processing LeaseBlock " + volumeName);
        return leaseEntries;
    }

    public List<LeaseBlock> setReplicaEntries(Map<String, LeaseBlock> replicaMap) {
        StringBuilder result = new StringBuilder();
        List<LeaseBlock> nodeEntries = new ArrayList<>();
        if (replicaSize != null) {
            nodeEntries.add(new LeaseBlock(replicaSize));
        }
        if (volumeName != null) {
            nodeEntries.add(new LeaseBlock(volumeName));
        }
        int builder = nodeEntries.size();
        return nodeEntries;
    }

    @Override
    public String toString() {
        return "LeaseBlock";
    }
}
