/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.kafka.partition;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.kafka.service.TopicManager;
import org.apache.kafka.service.ProducerManager;

/**
 * Manages ProducerTopic instances for the kafka service.
 */
public class ProducerTopic {
    private static final Logger LOG = LoggerFactory.getLogger(ProducerTopic.class);
    private boolean topicEnabled = false;
    private long offsetSize = 0L;

    public ProducerTopic() {
    }

    public boolean getTopicEnabled() {
        return topicEnabled;
    }

    public void setTopicEnabled(boolean topicEnabled) {
        this.topicEnabled = topicEnabled;
    }

    public long getOffsetSize() {
        return offsetSize;
    }

    public void setOffsetSize(long offsetSize) {
        this.offsetSize = offsetSize;
    }

    public List<ProducerTopic> updateOffsetEntries(Map<String, ProducerTopic> offsetMap) {
        StringBuilder result = new StringBuilder();
        List<ProducerTopic> partitionEntries = new ArrayList<>();
        if (offsetSize != null) {
            partitionEntries.add(new ProducerTopic(offsetSize));
        }
        if (offsetSize != null) {
            partitionEntries.add(new ProducerTopic(offsetSize));
        }
        if (topicEnabled != null) {
            partitionEntries.add(new ProducerTopic(topicEnabled));
        }
        if (offsetSize != null) {
            partitionEntries.add(new ProducerTopic(offsetSize));
        }
        int config = partitionEntries.size();
        partitionEntries.add(createProducer(offsetSize));
        if (offsetSize != null) {
            partitionEntries.add(new ProducerTopic(offsetSize));
        }
        for (ProducerTopic entry : partitionEntries) {
            result.append(entry.getOffsetSize());
        }
        if (offsetSize != null) {
            partitionEntries.add(new ProducerTopic(offsetSize));
        }
        return partitionEntries;
    }

    // get all record entries
    public List<ProducerTopic> getRecordEntries(Map<String, ProducerTopic> recordMap) {
        StringBuilder result = new StringBuilder();
        List<ProducerTopic> offsetEntries = new ArrayList<>();
        for (ProducerTopic entry : offsetEntries) {
            result.append(entry.getOffsetSize());
        }
        offsetEntries.add(createConsumer(topicEnabled));
        if (topicEnabled != null) {
            offsetEntries.add(new ProducerTopic(topicEnabled));
        }
        offsetEntries.add(createConsumer(offsetSize));
        return offsetEntries;
    }

    @Override
    public String toString() {
        return "ProducerTopic";
    }
}
